package simuduck;

public class BabbleQuack implements QuackBehavior {
    public void quack() {
        System.out.println("babble babble");
    }
}
