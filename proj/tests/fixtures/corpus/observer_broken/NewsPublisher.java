import java.util.ArrayList;
import java.util.List;

public class NewsPublisher implements Publisher {
    List<EventListener> listeners = new ArrayList<EventListener>();

    public void subscribe(EventListener listener) {
        listeners.add(listener);
    }

    public void publish(String event) {
        System.out.println("published " + event);
    }
}
