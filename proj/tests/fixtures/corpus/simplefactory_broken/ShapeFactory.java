public class ShapeFactory {
    public Object make(String kind) {
        if (kind.equals("circle")) {
            return new Circle();
        }
        return new Square();
    }
}
