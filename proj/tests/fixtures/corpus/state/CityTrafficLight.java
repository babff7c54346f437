public class CityTrafficLight extends TrafficLight {
    public CityTrafficLight() {
        state = new RedState();
    }
}
